"""Instance fingerprints and record ids."""
