"""Physical constants shared across modules."""

# Hydrogen gyromagnetic ratio. Cyclic convention: multiplying by field in
# Tesla gives a frequency in MHz (Larmor) or, with GAMMA_HZ_PER_T, a rate in
# 1/s used both for the off-resonance phase term and for the T2' dephasing
# rate gamma*|dB|.
GAMMA_MHZ_PER_T = 42.58
GAMMA_HZ_PER_T = GAMMA_MHZ_PER_T * 1e6

# Cap for T2 derived from 1/T2 = 1/T2* - gamma*|dB|; keeps voxels where the
# field offset nearly cancels the T2* rate from producing unbounded T2.
T2_CLAMP_S = 3.0
