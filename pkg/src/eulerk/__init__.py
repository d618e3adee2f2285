"""Generalized Euler characteristics of spaces built from classifying spaces of finite groups."""
