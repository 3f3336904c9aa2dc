from .errors import SeqCertError
