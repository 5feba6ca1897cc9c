"""Structured reports and tabular exports."""
