from setuptools import setup, find_packages

setup(
    name="bilattice-programs",
    version="0.2.0",
    description="Logic programs over bilattices: hypothesis support, hypothesis-founded semantics, "
                "and well-founded / Kripke-Kleene cross-checks.",
    author="User",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[],
    extras_require={
        "test": [
            "pytest",
            "hypothesis",
        ],
    },
    entry_points={
        "console_scripts": [
            "bilattice-programs=bilattice_programs.cli:main",
        ],
    },
    python_requires=">=3.9",
)
