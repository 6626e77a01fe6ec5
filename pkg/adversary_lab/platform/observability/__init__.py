"""
Observability (platform capability): run correlation and structured logging.
"""
