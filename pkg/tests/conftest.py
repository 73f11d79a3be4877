import ariki.schur

# Cross-checks of the semisimplicity and defect-0 criteria against the raw
# Schur-element zero test are on throughout the test profile.
ariki.schur.set_cross_check(True)
