from setuptools import setup, find_packages

with open('requirements.txt', encoding='utf-8') as file:
    requirements = file.read().splitlines()

with open('README.md', encoding='utf-8') as file:
    long_description = file.read()

setup(
    name='g2lab',
    version='0.0.1',
    description='Exact decision procedures for finite subgroups of SO(7) inside G2-subgroups.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(include=('g2lab', 'g2lab.*')),
    python_requires='>=3.9',
    install_requires=requirements,
    extras_require={'test': ['pytest>=7.0', 'hypothesis>=6.0']},
    entry_points={'console_scripts': ['g2lab = g2lab.cli:entrypoint']},
)
