"""
Services package for the baker's map toolkit.
Contains one module package per domain: classical dynamics, torus kinematics,
propagators, semiclassics, verification and the command-line surface.
"""
