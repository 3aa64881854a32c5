# src/main.py
import sys

from cli.parser import main

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
