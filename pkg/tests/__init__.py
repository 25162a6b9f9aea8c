"""frechetrans tests."""
