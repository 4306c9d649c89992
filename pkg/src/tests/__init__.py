"""
Test suite for the Higman-Thompson toolkit
"""
