"""Profile file formats, report documents and logging setup."""
