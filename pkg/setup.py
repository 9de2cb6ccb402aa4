"""
General setup for module
"""

from setuptools import setup, find_packages

setup(name='multiomit',
      version='0.1.0',
      python_requires='>3.5',
      setup_requires=['pytest-runner'],
      tests_require=['pytest'],
      install_requires=[
        'pandas>=1.0',
        'scipy>=1.6.0',
        'numpy>=1.16.1'],
      description='Probe response of hybrid atom-optomechanical cavities',
      packages=find_packages(exclude=['test', 'test.*']),
      package_data={'multiomit': ['config/*.json']},
      include_package_data=True,
      entry_points={
      'console_scripts': ['multiomit = multiomit.__main__:main'
          ]
      },
      long_description='Multiple transparency windows of a cavity coupled to a mechanical oscillator (linear and quadratic coupling) and to a Lambda-type atomic ensemble. Closed-form probe response, sideband and time-domain oracles, sweeps, feature detection and a command-line interface.'
      )
