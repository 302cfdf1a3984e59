"""Worked example systems: words, the Lyness map, sandpiles, staircase
diagrams under Suter's action, and rectangular tableaux under promotion."""
