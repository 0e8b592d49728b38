"""Unit groups of the group algebras F_(3^n) T_3m, computed and cross-checked."""
