"""
Main entry point for running catalanff as a module.
"""

from catalanff.cli import main

if __name__ == "__main__":
    main()
