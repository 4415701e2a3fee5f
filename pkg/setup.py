import setuptools
from io import open

requirements = [
    'numpy',
    'numba',
    'scipy',
    'pytest',
    'hypothesis',
    'setuptools'
]

setuptools.setup(name='aircoh',
      version='0.1.0',
      description='Cross-spectral densities of partially coherent Airy beams.',
      long_description=open('README.md', encoding='utf8').read(),
      long_description_content_type='text/markdown',
      packages=setuptools.find_packages(),
      scripts=['bin/aircoh'],
      install_requires=requirements,
      python_requires='>=3.6',
      classifiers=[
          "Programming Language :: Python :: 3",
          "Operating System :: OS Independent",
      ],
      zip_safe=False)
