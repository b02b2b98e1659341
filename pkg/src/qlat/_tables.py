"""Integer tables for the stored matrix constants.

Each table is ``(denominator, rows)``; entry value = numerator / denominator.
Blank entries of the printed displays are zeros.
"""

F4_BASIS = (2, """
     1  1  1  1
     0  2  0  0
     0  0  2  0
     0  0  0  2
""")

BW16_BASIS = (4, """
     1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1
     0  2  0  0  0  0  0  2  0  0  0  2  0  2  0  0
     0  0  2  0  0  0  0  2  0  0  0  2  0  0  2  0
     0  0  0  2  0  0  0  2  0  0  0  2  0  0  0  2
     0  0  0  0  2  0  0  2  0  0  0  0  0  2  2  0
     0  0  0  0  0  2  0  2  0  0  0  0  0  2  0  2
     0  0  0  0  0  0  2  2  0  0  0  0  0  0  2  2
     0  0  0  0  0  0  0  4  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  2  0  0  2  0  2  2  0
     0  0  0  0  0  0  0  0  0  2  0  2  0  2  0  2
     0  0  0  0  0  0  0  0  0  0  2  2  0  0  2  2
     0  0  0  0  0  0  0  0  0  0  0  4  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  2  2  2  2
     0  0  0  0  0  0  0  0  0  0  0  0  0  4  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  4  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  4
""")

TAU_I = (1, """
     0  1  0  0
    -1  0  0  0
     0  0  0  1
     0  0 -1  0
""")

TAU_J = (1, """
     0  0  1  0
     0  0  0 -1
    -1  0  0  0
     0  1  0  0
""")

TAU_K = (1, """
     0  0  0 -1
     0  0 -1  0
     0  1  0  0
     1  0  0  0
""")

RHO4_I1 = (1, """
     0  1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
    -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  1  0  0  0  0  0  0  0  0  0  0  0  0
     0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  1  0  0  0  0  0  0  0  0  0  0
     0  0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  1  0  0  0  0  0  0  0  0
     0  0  0  0  0  0 -1  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  1  0  0  0  0  0  0
     0  0  0  0  0  0  0  0 -1  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  1  0  0  0  0
     0  0  0  0  0  0  0  0  0  0 -1  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  1  0  0
     0  0  0  0  0  0  0  0  0  0  0  0 -1  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  1
     0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1  0
""")

RHO4_J1 = (1, """
     0  0  1  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0
    -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  1  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0 -1  0  0  0  0  0  0  0  0
     0  0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  1  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  1  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0 -1  0  0  0  0
     0  0  0  0  0  0  0  0 -1  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  1  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  1  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1
     0  0  0  0  0  0  0  0  0  0  0  0 -1  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  1  0  0
""")

RHO4_I2 = (1, """
     0  0  0  0  1  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  1  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  1  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  1  0  0  0  0  0  0  0  0
    -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  1  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  1  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  1  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  1
     0  0  0  0  0  0  0  0 -1  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0 -1  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0 -1  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0 -1  0  0  0  0
""")

RHO4_J2 = (1, """
     0  0  0  0  0  0  0  0  1  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  1  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  1  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  1  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0 -1  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0 -1  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1
    -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  1  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  1  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  1  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  1  0  0  0  0  0  0  0  0
""")

RHO4_I3 = (1, """
     0  1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
    -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  1  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  1  0  0  0  0  0  0  0  0  0  0
     0  0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0 -1  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  1  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  1  0  0  0  0  0  0
     0  0  0  0  0  0  0  0 -1  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0 -1  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  1  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  1  0  0
     0  0  0  0  0  0  0  0  0  0  0  0 -1  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  1  0
""")

RHO4_J3 = (1, """
     0  0  1  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  1  0  0  0  0  0  0  0  0  0  0  0  0
    -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  1  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  1  0  0  0  0  0  0  0  0
     0  0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0 -1  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  1  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  1  0  0  0  0
     0  0  0  0  0  0  0  0 -1  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0 -1  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  1  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  1
     0  0  0  0  0  0  0  0  0  0  0  0 -1  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0 -1  0  0
""")

RHO4_I4 = (1, """
     0  0  0  0  1  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  1  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  1  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  1  0  0  0  0  0  0  0  0
    -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0 -1  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0 -1  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1
     0  0  0  0  0  0  0  0  1  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  1  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  1  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  1  0  0  0  0
""")

RHO4_J4 = (1, """
     0  0  0  0  0  0  0  0  1  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  1  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  1  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  1  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  1  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  1  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  1  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  1
    -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0 -1  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0 -1  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0 -1  0  0  0  0  0  0  0  0
""")

RHO_X1 = (2, """
     1  0  0 -1  0  0  0  0  0  0  0  0  0  1  1  0
     0  1 -1  0  0  0  0  0  0  0  0  0  1  0  0  1
     0 -1  1  0  0  0  0  0  0  0  0  0  1  0  0  1
    -1  0  0  1  0  0  0  0  0  0  0  0  0  1  1  0
     0  0  0  0  1  0  0  1  0 -1  1  0  0  0  0  0
     0  0  0  0  0  1  1  0 -1  0  0  1  0  0  0  0
     0  0  0  0  0  1  1  0  1  0  0 -1  0  0  0  0
     0  0  0  0  1  0  0  1  0  1 -1  0  0  0  0  0
     0  0  0  0  0 -1  1  0  1  0  0  1  0  0  0  0
     0  0  0  0 -1  0  0  1  0  1  1  0  0  0  0  0
     0  0  0  0  1  0  0 -1  0  1  1  0  0  0  0  0
     0  0  0  0  0  1 -1  0  1  0  0  1  0  0  0  0
     0  1  1  0  0  0  0  0  0  0  0  0  1  0  0 -1
     1  0  0  1  0  0  0  0  0  0  0  0  0  1 -1  0
     1  0  0  1  0  0  0  0  0  0  0  0  0 -1  1  0
     0  1  1  0  0  0  0  0  0  0  0  0 -1  0  0  1
""")

RHO_X2 = (2, """
     1  1  1 -1  0  0  0  0  0  0  0  0  0  0  0  0
     1  1 -1  1  0  0  0  0  0  0  0  0  0  0  0  0
     1 -1  1  1  0  0  0  0  0  0  0  0  0  0  0  0
    -1  1  1  1  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  1 -1  1  1  0  0  0  0  0  0  0  0
     0  0  0  0 -1  1  1  1  0  0  0  0  0  0  0  0
     0  0  0  0  1  1  1 -1  0  0  0  0  0  0  0  0
     0  0  0  0  1  1 -1  1  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  1  1 -1  1  0  0  0  0
     0  0  0  0  0  0  0  0  1  1  1 -1  0  0  0  0
     0  0  0  0  0  0  0  0 -1  1  1  1  0  0  0  0
     0  0  0  0  0  0  0  0  1 -1  1  1  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  1 -1 -1 -1
     0  0  0  0  0  0  0  0  0  0  0  0 -1  1 -1 -1
     0  0  0  0  0  0  0  0  0  0  0  0 -1 -1  1 -1
     0  0  0  0  0  0  0  0  0  0  0  0 -1 -1 -1  1
""")

RHO_X3 = (2, """
     1  0 -1  0  0  0  0  0  0  0  0  0  0  1  0  1
     0  1  0 -1  0  0  0  0  0  0  0  0  1  0  1  0
    -1  0  1  0  0  0  0  0  0  0  0  0  0  1  0  1
     0 -1  0  1  0  0  0  0  0  0  0  0  1  0  1  0
     0  0  0  0  1  0  1  0  0 -1  0  1  0  0  0  0
     0  0  0  0  0  1  0  1 -1  0  1  0  0  0  0  0
     0  0  0  0  1  0  1  0  0  1  0 -1  0  0  0  0
     0  0  0  0  0  1  0  1  1  0 -1  0  0  0  0  0
     0  0  0  0  0 -1  0  1  1  0  1  0  0  0  0  0
     0  0  0  0 -1  0  1  0  0  1  0  1  0  0  0  0
     0  0  0  0  0  1  0 -1  1  0  1  0  0  0  0  0
     0  0  0  0  1  0 -1  0  0  1  0  1  0  0  0  0
     0  1  0  1  0  0  0  0  0  0  0  0  1  0 -1  0
     1  0  1  0  0  0  0  0  0  0  0  0  0  1  0 -1
     0  1  0  1  0  0  0  0  0  0  0  0 -1  0  1  0
     1  0  1  0  0  0  0  0  0  0  0  0  0 -1  0  1
""")

RHO_X4 = (1, """
     0  0  0  0  0  0 -1  0  0  0  0  0  0  0  0  0
     0  1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  1  0  0  0  0  0  0  0  0  0  0  0  0
     0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  1  0  0  0  0  0  0  0  0  0  0
    -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  1  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  1  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1
     0  0  0  0  0  0  0  0  0  0  1  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0 -1  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  1  0  0  0
     0  0  0  0  0  0  0  0  0  0  0 -1  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  1  0
     0  0  0  0  0  0  0  0  0 -1  0  0  0  0  0  0
""")

RHO_X5 = (1, """
     0  0  0  0  1  0  0  0  0  0  0  0  0  0  0  0
     0  1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0 -1  0  0  0  0  0  0  0  0  0
     0  0  0  1  0  0  0  0  0  0  0  0  0  0  0  0
     1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  1  0  0  0  0  0  0  0  0  0  0
     0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  1  0  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  1  0  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  1  0  0
     0  0  0  0  0  0  0  0  0  0  1  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1
     0  0  0  0  0  0  0  0  0  0  0  0  1  0  0  0
     0  0  0  0  0  0  0  0  0  1  0  0  0  0  0  0
     0  0  0  0  0  0  0  0  0  0  0  0  0  0  1  0
     0  0  0  0  0  0  0  0  0  0  0 -1  0  0  0  0
""")

RHO_X6 = (2, """
     1  0  0  0  0  1  0  0  0  0  0 -1  0  0 -1  0
     0  1  0  0 -1  0  0  0  0  0 -1  0  0  0  0  1
     0  0  1  0  0  0  0  1  0  1  0  0  1  0  0  0
     0  0  0  1  0  0 -1  0  1  0  0  0  0 -1  0  0
     0 -1  0  0  1  0  0  0  0  0 -1  0  0  0  0  1
     1  0  0  0  0  1  0  0  0  0  0  1  0  0  1  0
     0  0  0 -1  0  0  1  0  1  0  0  0  0 -1  0  0
     0  0  1  0  0  0  0  1  0 -1  0  0 -1  0  0  0
     0  0  0  1  0  0  1  0  1  0  0  0  0  1  0  0
     0  0  1  0  0  0  0 -1  0  1  0  0 -1  0  0  0
     0 -1  0  0 -1  0  0  0  0  0  1  0  0  0  0  1
    -1  0  0  0  0  1  0  0  0  0  0  1  0  0 -1  0
     0  0  1  0  0  0  0 -1  0 -1  0  0  1  0  0  0
     0  0  0 -1  0  0 -1  0  1  0  0  0  0  1  0  0
    -1  0  0  0  0  1  0  0  0  0  0 -1  0  0  1  0
     0  1  0  0  1  0  0  0  0  0  1  0  0  0  0  1
""")

RHO_X7 = (2, """
     1  0  0  0  0  1  0  0  0  1  0  0  1  0  0  0
     0  1  0  0  1  0  0  0  1  0  0  0  0  1  0  0
     0  0  1  0  0  0  0  1  0  0  0 -1  0  0 -1  0
     0  0  0  1  0  0  1  0  0  0 -1  0  0  0  0 -1
     0 -1  0  0  1  0  0  0  1  0  0  0  0 -1  0  0
    -1  0  0  0  0  1  0  0  0  1  0  0 -1  0  0  0
     0  0  0 -1  0  0  1  0  0  0 -1  0  0  0  0  1
     0  0 -1  0  0  0  0  1  0  0  0 -1  0  0  1  0
     0 -1  0  0 -1  0  0  0  1  0  0  0  0  1  0  0
    -1  0  0  0  0 -1  0  0  0  1  0  0  1  0  0  0
     0  0  0  1  0  0  1  0  0  0  1  0  0  0  0  1
     0  0  1  0  0  0  0  1  0  0  0  1  0  0  1  0
    -1  0  0  0  0  1  0  0  0 -1  0  0  1  0  0  0
     0 -1  0  0  1  0  0  0 -1  0  0  0  0  1  0  0
     0  0  1  0  0  0  0 -1  0  0  0 -1  0  0  1  0
     0  0  0  1  0  0 -1  0  0  0 -1  0  0  0  0  1
""")

TAU_OMEGA_DISPLAY = (2, """
    -1  1  1 -1
    -1 -1 -1 -1
    -1  1 -1  1
     1  1 -1 -1
""")
