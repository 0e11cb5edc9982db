"""Command-line front end (`dmod`) and its configuration."""
