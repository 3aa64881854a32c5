"""Higher-order Schwarz lemma oracles and self-map samplers."""
