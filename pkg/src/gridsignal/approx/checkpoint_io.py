import logging
import struct

import numpy as np

from ..errors import CheckpointError

logger = logging.getLogger(__name__)


class CheckpointIO:
    """Provides static methods and fields for reading and writing checkpoints.

    A checkpoint file consists of ``HEADER``, the length-prefixed
    ``FORMAT_VERSION``, the number of sections, and then one section per
    policy group. A section is the length-prefixed group name, the
    length-prefixed approximator kind, and the parameters as written by
    the approximator's ``write_params``. All numbers are little-endian.

    All read methods raise a ``CheckpointError`` if we reach the end of
    the file before reading the desired value.
    """

    # The bytes at the beginning of every checkpoint file. We use this as a
    # crude way of checking whether we are dealing with a checkpoint.
    HEADER = b'\x89GSQ\r\n\x1a\n'

    # Bytes identifying the version of the file format. Whenever the format
    # changes, we should change the version.
    FORMAT_VERSION = b'2026-10-01T00:00:00Z'

    @staticmethod
    def _read_exact(input_, length):
        bytes_ = input_.read(length)
        if len(bytes_) < length:
            raise CheckpointError('Unexpected end of checkpoint file')
        return bytes_

    @staticmethod
    def write_int(output, value):
        """Write the specified 32-bit signed integer value to ``output``."""
        output.write(struct.pack('<i', value))

    @staticmethod
    def read_int(input_):
        """Read a 32-bit signed integer value from the specified file."""
        return struct.unpack('<i', CheckpointIO._read_exact(input_, 4))[0]

    @staticmethod
    def write_long(output, value):
        """Write the specified 64-bit signed integer value to ``output``."""
        output.write(struct.pack('<q', value))

    @staticmethod
    def read_long(input_):
        """Read a 64-bit signed integer value from the specified file."""
        return struct.unpack('<q', CheckpointIO._read_exact(input_, 8))[0]

    @staticmethod
    def write_bytes(output, bytes_):
        """Write the specified ``bytes``, prefixed with their length.

        This is the inverse of ``read_bytes``.
        """
        CheckpointIO.write_int(output, len(bytes_))
        output.write(bytes_)

    @staticmethod
    def read_bytes(input_):
        """Read a ``bytes`` object written by ``write_bytes``."""
        length = CheckpointIO.read_int(input_)
        if length < 0:
            raise CheckpointError('Negative length in checkpoint file')
        return CheckpointIO._read_exact(input_, length)

    @staticmethod
    def write_str(output, value):
        CheckpointIO.write_bytes(output, value.encode())

    @staticmethod
    def read_str(input_):
        try:
            return CheckpointIO.read_bytes(input_).decode()
        except UnicodeDecodeError as exception:
            raise CheckpointError(
                'Corrupt string in checkpoint file') from exception

    @staticmethod
    def write_array(output, array):
        """Write a float64 array, preceded by its shape.

        This is the inverse of ``read_array``.
        """
        array = np.asarray(array, dtype='<f8')
        CheckpointIO.write_int(output, array.ndim)
        for size in array.shape:
            CheckpointIO.write_int(output, size)
        output.write(array.tobytes())

    @staticmethod
    def read_array(input_):
        """Read a float64 array written by ``write_array``.

        Returns:
            numpy.ndarray: The array, with native byte order.
        """
        ndim = CheckpointIO.read_int(input_)
        if not 0 <= ndim <= 8:
            raise CheckpointError('Corrupt array header in checkpoint file')
        shape = tuple(CheckpointIO.read_int(input_) for _ in range(ndim))
        if any(size < 0 for size in shape):
            raise CheckpointError('Corrupt array header in checkpoint file')
        count = int(np.prod(shape, dtype=np.int64))
        data = CheckpointIO._read_exact(input_, 8 * count)
        return np.frombuffer(data, dtype='<f8').astype(np.float64).reshape(
            shape)

    @staticmethod
    def write_header(output, num_sections):
        output.write(CheckpointIO.HEADER)
        CheckpointIO.write_bytes(output, CheckpointIO.FORMAT_VERSION)
        CheckpointIO.write_int(output, num_sections)

    @staticmethod
    def read_header(input_):
        """Read the file header and return the number of sections.

        Raises:
            CheckpointError: If the file is not a checkpoint or has a
                different format version.
        """
        header = input_.read(len(CheckpointIO.HEADER))
        if header != CheckpointIO.HEADER:
            raise CheckpointError('Not a checkpoint file')
        version = CheckpointIO.read_bytes(input_)
        if version != CheckpointIO.FORMAT_VERSION:
            raise CheckpointError(
                'Checkpoint format version {!r} does not match {!r}'.format(
                    version.decode(errors='replace'),
                    CheckpointIO.FORMAT_VERSION.decode()))
        num_sections = CheckpointIO.read_int(input_)
        if num_sections < 1:
            raise CheckpointError('Checkpoint file has no sections')
        return num_sections


def _as_dict(approximators):
    if isinstance(approximators, dict):
        return approximators
    return {'shared': approximators}


def save_checkpoint(approximators, filename):
    """Write approximators to a checkpoint file.

    Arguments:
        approximators (ValueApproximator|dict<str, ValueApproximator>):
            The approximator, or a map from policy group names to the
            approximators of the groups. A single approximator is stored
            under the group name ``'shared'``.
        filename (str): The file to write.
    """
    approximators = _as_dict(approximators)
    with open(filename, 'wb') as output:
        CheckpointIO.write_header(output, len(approximators))
        for group, approximator in approximators.items():
            CheckpointIO.write_str(output, group)
            CheckpointIO.write_str(output, approximator.KIND)
            approximator.write_params(output)
    logger.info(
        'Wrote checkpoint %s (%s)', filename, ', '.join(approximators))


def load_checkpoint(approximators, filename):
    """Load the parameters in a checkpoint file into approximators.

    Arguments:
        approximators (ValueApproximator|dict<str, ValueApproximator>):
            The approximators to fill in, in the form passed to
            ``save_checkpoint``. The file must contain exactly these
            policy groups, with matching kinds and shapes.
        filename (str): The file to read.

    Returns:
        ValueApproximator|dict<str, ValueApproximator>: ``approximators``.

    Raises:
        CheckpointError: If the file is unreadable, truncated, of another
            format version, or does not fit ``approximators``.
    """
    expected = _as_dict(approximators)
    try:
        input_ = open(filename, 'rb')
    except OSError as exception:
        raise CheckpointError(
            'Unable to open checkpoint {:s}: {:s}'.format(
                filename, str(exception))) from exception
    with input_:
        num_sections = CheckpointIO.read_header(input_)
        if num_sections != len(expected):
            raise CheckpointError(
                'Checkpoint has {:d} policy groups, expected {:d}'.format(
                    num_sections, len(expected)))
        for _ in range(num_sections):
            group = CheckpointIO.read_str(input_)
            if group not in expected:
                raise CheckpointError(
                    'Unexpected policy group {!r} in checkpoint'.format(group))
            kind = CheckpointIO.read_str(input_)
            approximator = expected[group]
            if kind != approximator.KIND:
                raise CheckpointError(
                    'Checkpoint holds a {:s} approximator for group {!r}, '
                    'not a {:s} approximator'.format(
                        kind, group, approximator.KIND))
            approximator.read_params(input_)
        if input_.read(1):
            raise CheckpointError('Trailing data in checkpoint file')
    logger.info('Loaded checkpoint %s', filename)
    return approximators
