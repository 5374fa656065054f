"""KFacetLab: exact k-set and k-facet enumeration for point sets under polynomial lifts."""

__version__ = "1.0.0"
