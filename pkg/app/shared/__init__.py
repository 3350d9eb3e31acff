"""Layered environment configuration and loguru setup."""
