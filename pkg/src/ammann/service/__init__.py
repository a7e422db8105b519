"""HTTP service exposing the tiling and reduction-data computations."""
