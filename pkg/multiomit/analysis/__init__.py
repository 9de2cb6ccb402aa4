"""
Detuning sweeps, transparency-window detection and resonance structure
"""

from .sweep import Profile, sweep
from .features import SpectralFeature, detect_features, full_width_half_maximum, peaks, dips
from .roots import RootReport, denominator_roots, denominator_polynomial, feature_root_coherence
from .phase import PhaseStudy, phase_study
