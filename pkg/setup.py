import setuptools


setuptools.setup(
    name='resolvkit',
    version='0.1.0',

    author='a1black',
    description='Exact computation of resolvability parameters of graphs: '
                'metric, adjacency and broadcast dimension, '
                'locating-dominating number.',
    license='MIT',
    classifiers=[
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3 :: Only',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    keywords='graph, metric dimension, broadcast dimension, '
             'locating-dominating set',

    packages=['resolvkit', 'resolvkit.commands'],
    python_requires='>=3.10',
    include_package_data=True,
    install_requires=[
        'humanize>=0.5.0',
        'networkx>=2.6',
        'ruamel.yaml>=0.17.0',
        'tqdm>=4.43.0',
    ],
    extras_require={
        'test': [
            'hypothesis>=6.0',
            'pytest>=7.0',
        ],
    },

    entry_points={
        'console_scripts': [
            'rdim=resolvkit.__main__:main'
        ]
    }
)
