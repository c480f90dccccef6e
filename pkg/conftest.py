import sys
from pathlib import Path

# Make the src layout importable without installation.
sys.path.insert(0, str(Path(__file__).parent / "src"))
