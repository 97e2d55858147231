"""Services for chaos_probe."""
