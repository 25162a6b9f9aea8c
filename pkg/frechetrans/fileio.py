"""Text formats: curves, matrices, updates and 4-OV instances."""
import numpy

import frechetrans.errors
import frechetrans.frechet
import frechetrans.geometry
import frechetrans.hardness
import frechetrans.offline


class _Lines(object):
    """Non-blank lines of a text with their 1-based numbers."""

    def __init__(self, text, path=None):
        self.path = path
        self.lines = [(number, line.strip()) for number, line
                      in enumerate(text.splitlines(), 1) if line.strip()]
        self.pos = 0
        self.last = 0

    def error(self, message, line=None):
        return frechetrans.errors.FormatError(
            message, self.path, self.last if line is None else line)

    def next(self, what):
        if self.pos >= len(self.lines):
            raise self.error('missing %s' % (what,))
        self.last, line = self.lines[self.pos]
        self.pos += 1
        return line

    def ints(self, what, count):
        fields = self.next(what).split()
        if len(fields) != count:
            raise self.error('expected %d integers for %s, got %r'
                             % (count, what, fields))
        try:
            return [int(f) for f in fields]
        except ValueError:
            raise self.error('%s is not an integer line: %r'
                             % (what, fields)) from None

    def finish(self):
        if self.pos < len(self.lines):
            raise self.error('trailing content', self.lines[self.pos][0])


def _read(path):
    with open(path, encoding='utf-8') as handle:
        return handle.read()


def _write(path, text):
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(text)


def parse_curve(text, path=None):
    """Parse a curve: a count line, then one "x y" line per point.

    Args:
        text (str): File content.

    Kwargs:
        path (str): File path for diagnostics.

    Returns:
        Curve: Parsed curve.

    Raises:
        frechetrans.errors.FormatError: Malformed content.
    """
    lines = _Lines(text, path)
    n, = lines.ints('point count', 1)
    if n < 1:
        raise lines.error('curve needs at least one point')
    points = []
    for _ in range(n):
        fields = lines.next('point').split()
        try:
            points.append(frechetrans.geometry.Point(fields))
        except (ValueError, frechetrans.errors.GeometryError) as exc:
            raise lines.error('bad point %r: %s' % (fields, exc)) from None
    lines.finish()
    return frechetrans.geometry.Curve(points)


def format_curve(curve):
    """Returns the text of a curve; reals print as shortest round-trip
    decimals."""
    rows = ['%d' % (len(curve),)]
    rows.extend('%r %r' % (p.x, p.y) for p in curve)
    return '\n'.join(rows) + '\n'


def parse_matrix(text, path=None):
    """Parse a matrix: a size line "n" (or "n_rows n_cols"), then one line
    of 0/1 characters per row.

    Returns:
        FreeSpaceMatrix: Parsed matrix.
    """
    lines = _Lines(text, path)
    header = lines.next('matrix size').split()
    try:
        shape = [int(f) for f in header]
    except ValueError:
        raise lines.error('bad matrix size %r' % (header,)) from None
    if len(shape) == 1:
        shape = shape * 2
    if len(shape) != 2 or min(shape) < 1:
        raise lines.error('bad matrix size %r' % (header,))
    bits = numpy.zeros(shape, dtype=bool)
    for x in range(shape[0]):
        row = lines.next('matrix row')
        if len(row) != shape[1] or set(row) - set('01'):
            raise lines.error('row must be %d characters over 0/1, got %r'
                              % (shape[1], row))
        bits[x] = [c == '1' for c in row]
    lines.finish()
    return frechetrans.frechet.FreeSpaceMatrix(bits)


def format_matrix(matrix):
    """Returns the text of a matrix."""
    if matrix.is_square():
        rows = ['%d' % (matrix.n_rows,)]
    else:
        rows = ['%d %d' % matrix.shape]
    rows.extend(''.join('1' if b else '0' for b in row)
                for row in matrix.bits)
    return '\n'.join(rows) + '\n'


def parse_updates(text, path=None):
    """Parse updates: "n U", then U lines "x y b".

    Returns:
        tuple: (n, list of UpdateOp).
    """
    lines = _Lines(text, path)
    n, count = lines.ints('update header', 2)
    if n < 1 or count < 0:
        raise lines.error('bad update header %d %d' % (n, count))
    updates = []
    for _ in range(count):
        x, y, bit = lines.ints('update', 3)
        if bit not in (0, 1):
            raise lines.error('update bit must be 0 or 1, got %d' % (bit,))
        updates.append(frechetrans.offline.UpdateOp((x, y), bit))
    lines.finish()
    return n, updates


def format_updates(n, updates):
    """Returns the text of an update list for an n x n matrix."""
    rows = ['%d %d' % (n, len(updates))]
    rows.extend('%d %d %d' % (position[0], position[1], bit)
                for position, bit in updates)
    return '\n'.join(rows) + '\n'


def parse_ov(text, path=None):
    """Parse a 4-OV instance: "N D", then 4 blocks of N lines of D 0/1
    characters.

    Returns:
        OVInstance: Parsed instance.
    """
    lines = _Lines(text, path)
    n, d = lines.ints('instance header', 2)
    if n < 1 or d < 1:
        raise lines.error('N and D must be positive, got %d %d' % (n, d))
    groups = []
    for _ in range(4):
        group = []
        for _ in range(n):
            row = lines.next('vector')
            if len(row) != d or set(row) - set('01'):
                raise lines.error('vector must be %d characters over 0/1, '
                                  'got %r' % (d, row))
            group.append([int(c) for c in row])
        groups.append(group)
    lines.finish()
    return frechetrans.hardness.OVInstance(groups)


def format_ov(ov):
    """Returns the text of a 4-OV instance."""
    rows = ['%d %d' % (ov.n, ov.d)]
    for group in ov.vectors:
        rows.extend(''.join(str(bit) for bit in v) for v in group)
    return '\n'.join(rows) + '\n'


def read_curve(path):
    """Returns the curve stored at path."""
    return parse_curve(_read(path), path)


def write_curve(path, curve):
    """Store a curve at path."""
    _write(path, format_curve(curve))


def read_matrix(path):
    """Returns the matrix stored at path."""
    return parse_matrix(_read(path), path)


def write_matrix(path, matrix):
    """Store a matrix at path."""
    _write(path, format_matrix(matrix))


def read_updates(path):
    """Returns (n, updates) stored at path."""
    return parse_updates(_read(path), path)


def write_updates(path, n, updates):
    """Store an update list at path."""
    _write(path, format_updates(n, updates))


def read_ov(path):
    """Returns the 4-OV instance stored at path."""
    return parse_ov(_read(path), path)


def write_ov(path, ov):
    """Store a 4-OV instance at path."""
    _write(path, format_ov(ov))
