# -*- coding: utf-8 -*-
from pathlib import Path
from setuptools import setup, find_packages

requirements_file_path = Path(__file__).parent / "requirements.txt"
with open(requirements_file_path) as file:
    install_requires = file.readlines()

with open("README.md", "r") as f:
    long_description = f.read()

setup(
    name="graphic-sequences",
    version="0.0.1",
    description="Fast graphicality testing for degree sequences: sufficient conditions, Erdős–Gallai and oracles",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    package_data={"graphic_sequences": ["*.yaml"]},
    include_package_data=True,
    python_requires=">=3.9",
    install_requires=install_requires,
    entry_points={"console_scripts": ["graphic-sequences=graphic_sequences.cli:main"]},
)
