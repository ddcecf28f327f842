"""
Package containing the line-oriented text formats of the CLI utility:

  * Module :mod:`formats.instances <pcp_chain.formats.instances>` parses
    and prints problem instances, translating symbol names to symbol
    codes with an :class:`InternTable <pcp_chain.formats.instances.InternTable>`
  * Module :mod:`formats.witnesses <pcp_chain.formats.witnesses>` parses
    and prints witnesses and reduction map files

Take a look at :ref:`file_formats` for more details about their layout.
"""

from .instances import InvalidFormat
