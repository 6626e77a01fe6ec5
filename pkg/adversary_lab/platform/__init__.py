"""
Platform/infrastructure modules.

Cross-cutting concerns (configuration, errors, logging) shared by every
capability under `features`.
"""
