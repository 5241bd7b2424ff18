"""cutbench command-line interface."""
