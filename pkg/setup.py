from setuptools import find_packages, setup

setup(
    name="balanced-colorings",
    version="1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.10",
    install_requires=[
        "pyyaml>=6.0.1",
        "python-dotenv>=1.0.1",
        "pydantic>=2.5",
        "fastapi>=0.115.0",
        "uvicorn>=0.30.0",
        "rich>=13.7.0",
        "tqdm>=4.66.0",
        "numpy>=1.26",
        "mpmath>=1.3.0",
    ],
    entry_points={
        "console_scripts": ["balanced=src.app:main"],
    },
)
'''
setup.py is a script used in Python packaging to specify the distribution meta-data and dependencies for a project

It is typically used to build and distribute packages for installation via tools like pip.

'''
