"""Allow running as python -m hazard_rate."""

from hazard_rate.cli import main

if __name__ == "__main__":
    main()
