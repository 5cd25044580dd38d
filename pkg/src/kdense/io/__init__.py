from . import io
from . import json
from . import reports
