"""Command bodies dispatched from cli.py"""
