"""tw test paketi."""
