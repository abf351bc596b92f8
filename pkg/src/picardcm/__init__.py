"""Exact toolkit for primes in denominators of CM Picard curve invariants."""
