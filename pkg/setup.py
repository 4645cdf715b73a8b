from setuptools import Extension, setup
from Cython.Build import cythonize

# -ffp-contract=off keeps the compiled kernels bit-identical to the pure
# Python fallback (no fused multiply-add re-association).
setup(
    ext_modules=cythonize(
        [
            Extension(
                "pr3bp._core",
                ["src/pr3bp/_core.pyx"],
                extra_compile_args=["-O2", "-ffp-contract=off"],
                language="c",
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
)
