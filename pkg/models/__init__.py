"""Domain models package: immutable value types with ``to_dict()``."""
