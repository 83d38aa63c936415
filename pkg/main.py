#!/usr/bin/env python3
"""
tw - Ana Program
================
Transfinit kelimeler uzerinde indirgeme, occurrence sayimi ve Specker tanigi.

Kullanim:
    python main.py reduce "g[0].inv(g[0])"
    python main.py phi --family "Mk(k1)" "Mk(k1)"
    python main.py witness "0,1,w" k1
"""

import sys
from pathlib import Path

# Proje kok dizinini path'e ekle
sys.path.insert(0, str(Path(__file__).parent))

# .env dosyasini yukle (varsa); TW_* degiskenleri settings_loader tarafindan okunur
try:
    from dotenv import load_dotenv
    env_path = Path(__file__).parent / ".env"
    if env_path.exists():
        load_dotenv(env_path)
except ImportError:
    pass

from src.cli import main


if __name__ == "__main__":
    sys.exit(main())
