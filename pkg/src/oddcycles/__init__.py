"""Half-integral packing and covering of directed odd cycles at desk scale."""

__version__ = "0.1.0"
