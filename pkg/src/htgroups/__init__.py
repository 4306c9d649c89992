"""
Higman-Thompson groups G_{k,1}: prefix-code tables, group operations and embeddings
"""

__version__ = "0.1.0"
