"""Exact equilibrium payoffs and uniqueness diagnostics for finite Bayesian persuasion games."""
