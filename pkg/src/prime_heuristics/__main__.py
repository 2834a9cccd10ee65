"""Allow ``python -m prime_heuristics``."""

from .cli import main

raise SystemExit(main())
