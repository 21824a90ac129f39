"""Reference partitions transcribed from the source figures."""
from ncpb.enumeration import ColoredPartition
from ncpb.partition import validate

FIG1 = validate([[1, -7], [7, -1], [2, 4, -6], [6, -2, -4], [3], [-3], [5, -5], [8], [-8]], 8)

FIG1_ARCS = {(1, -7), (2, 4), (4, -6), (5, -5), (6, -2), (-2, -4), (7, -1)}

FIG1_CHORDS = {
    frozenset(c) for c in [
        (2, 4), (4, -6), (-6, 2),
        (6, -2), (-2, -4), (-4, 6),
        (1, -7), (5, -5), (7, -1),
    ]
}

FIG2_LEFT = [2, 5, 7, 8]
FIG2_RIGHT = [1, 3, 6, 10]
FIG2 = validate([[1, -7], [2, 3], [4, -4], [5, 6], [7, -1], [8, 9, 10],
                 [-2, -3], [-5, -6], [-8, -9, -10]], 10)

FIG4_TOP = validate([[2, 3, -8], [8, -2, -3], [4, 5], [-4, -5], [6, 7, -6, -7],
                     [1], [-1], [9], [-9]], 9)
FIG4_BOTTOM = validate([[1, 2, 3, -8], [8, -1, -2, -3], [4, 5], [-4, -5],
                        [6, 7, -6, -7], [9], [-9]], 9)

_fig5_top = validate([[1, -5, -6], [5, 6, -1], [2, 3], [-2, -3], [7], [-7],
                      [4], [-4], [8], [-8]], 8)
FIG5_TOP = ColoredPartition.of(_fig5_top, {4: "-1", 8: "-x"})
_fig5_bottom = validate([[1, -5, -6], [5, 6, -1], [2, 3], [-2, -3], [7], [-7],
                         [4, -4], [8], [-8]], 8)
FIG5_BOTTOM = ColoredPartition.of(_fig5_bottom, {8: "-x"})
