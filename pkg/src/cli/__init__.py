"""
Command line front end: settings and the simulate / audit / reproduce-paper workflows.
"""
