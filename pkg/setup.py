"""Setup shim for local, editable installs."""

from setuptools import setup

if __name__ == "__main__":
    setup()
