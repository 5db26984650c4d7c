"""Kochen-Specker parity proofs in the two-qubit 60-ray system."""
