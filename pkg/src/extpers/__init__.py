"""Extended persistence diagrams of PL functions, bottleneck distances and realizations."""
