from setuptools import setup, find_packages

# Read the contents of the README file
with open("README.md", encoding="utf-8") as f:
    long_description = f.read()

# Read the requirements file
with open("requirements.txt", encoding="utf-8") as f:
    requirements = f.read().splitlines()
    # Remove comments and empty lines
    requirements = [line.split("#")[0].strip() for line in requirements if line and not line.startswith("#")]

# The src directory is installed as the gridbond package
packages = ["gridbond"] + [f"gridbond.{name}" for name in find_packages(where="src")]

setup(
    name="gridbond",
    version="0.1.0",
    description="Exact total domination and total bondage numbers of grid graphs",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="gridbond developers",
    packages=packages,
    package_dir={"gridbond": "src"},
    include_package_data=True,
    install_requires=requirements,
    python_requires=">=3.10",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={
        "console_scripts": [
            "gridbond=gridbond.main:main",
        ],
    },
)
