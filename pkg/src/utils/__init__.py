# Yardimci moduller: logger ve hata siniflari
