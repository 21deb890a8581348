# trishape engines — shape-space geometry, solvers, sampling and export
