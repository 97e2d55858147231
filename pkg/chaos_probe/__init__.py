"""chaos_probe package."""
