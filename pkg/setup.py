# Exists only to enable `pip install -e .`
import setuptools

setuptools.setup()
