"""CLI invocations frozen under tests/golden/ (regenerate with `python3 tests/golden_cases.py`)."""

import io
from pathlib import Path

GOLDEN_DIR = Path(__file__).parent / "golden"

CASES = {
    "series.txt": ["series", "--bundled"],
    "config-series.txt": ["config-series", "--bundled"],
    "signature.txt": ["signature", "--bundled"],
    "characters.txt": ["characters", "6"],
    "series.json": ["series", "--bundled", "--order", "3", "--json"],
    "config-series.csv": ["config-series", "--bundled", "--order", "3", "--csv"],
}


def render(argv):
    from symgenera.cli import run

    out, err = io.StringIO(), io.StringIO()
    status = run(argv, out, err)
    return status, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, argv in CASES.items():
        status, text, err = render(argv)
        assert status == 0, err
        (GOLDEN_DIR / name).write_text(text)
        print(f"wrote {name}")
