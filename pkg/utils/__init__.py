"""Error types, document validators and JSON helpers."""
