"""Tests for :mod:`pypersuade`."""
