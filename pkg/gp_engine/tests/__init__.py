# Path and File Name : gp_engine/tests/__init__.py
# Author: gp_engine maintainers
# Details of functionality of this file: Test package for gp_engine
