import os

from setuptools import setup, find_packages


def read(name):
    return open(os.path.join(os.path.dirname(__file__), name)).read()


setup(
    name='kodag',
    description='Exact incidence algebras of F-denominated graded posets, with every closed form checked by brute force.',
    long_description=read('README.md'),
    long_description_content_type='text/markdown',
    version='0.1.0',
    license='BSD 3-Clause',
    packages=find_packages(exclude=['tests', 'tests.*', 'benchmarks']),
    include_package_data=True,
    install_requires=['numpy', 'pandas', 'tabulate'],
    extras_require={'dev': ['pytest', 'sphinx', 'numpydoc']},
    entry_points={'console_scripts': ['kodag = kodag.cli:run']},
    platforms='any',
    python_requires='>=3.8'
)
