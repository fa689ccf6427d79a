"""Download the published C(2,11) and C(2,15) tour files into tests/fixtures/zenodo/."""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import zenodo  # noqa: E402


def main():
    for k, record in zenodo.RECORDS.items():
        existing = zenodo.local_fixture(record)
        if existing is not None:
            print(f"k={k}: already present at {existing}")
            continue
        try:
            print(f"k={k}: fetched {zenodo.fetch(record)}")
        except OSError as exc:
            sys.exit(f"k={k}: could not fetch record {record}: {exc}")


if __name__ == "__main__":
    main()
