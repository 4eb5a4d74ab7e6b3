"""Unit test package for snailcalc."""
