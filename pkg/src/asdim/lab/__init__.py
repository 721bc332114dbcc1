"""Finite experiments on Baumslag-Solitar groups and their Bass-Serre trees."""
