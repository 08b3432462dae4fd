from setuptools import setup

setup(
    name='evchar-cli',
    version='0.1.0',
    py_modules=[
        'cli', 'acceptance', 'config_manager', 'identity_lab',
        'logger', 'parallel_runner', 'q_series',
    ],
    packages=['algebra', 'utils'],
    install_requires=[
        'click>=8.0.0',
        'tqdm>=4.64.0',
    ],
    entry_points={
        'console_scripts': [
            'evchar=cli:main',
        ],
    },
    description='Exact symmetric-group character sums over Ev multisets, with an identity lab.',
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
    ],
)
