"""Test suite for the spinphase toolkit."""
