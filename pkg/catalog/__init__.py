"""Model ideals, named constructions and degeneration families of Gorenstein point schemes."""
