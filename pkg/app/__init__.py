"""Artin relations among Dehn twists: normal forms, foldings, curve neighborhoods and verdict tables."""
