"""tw konfigurasyonu: varsayilanlar (constants) ve YAML yukleyici (settings_loader)."""
