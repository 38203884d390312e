"""Numerical toolkit for the strong and weak Stechkin inequalities."""
