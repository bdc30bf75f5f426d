"""Console entry point: ``python -m hyperecc`` / the ``hyperecc`` script."""

from __future__ import annotations

from hyperecc.app import main

if __name__ == "__main__":
    raise SystemExit(main())
