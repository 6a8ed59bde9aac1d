from django import forms
from django.conf import settings
from django.core.exceptions import ValidationError

from .airy_pq import FAMILIAS
from .airy_rst import PRODUCTOS
from .airy_numeric import X_MAX
from .ratcore import Poly
from .tablas import FAMILIAS_TABLA

# --- Definición de Opciones (Choices) ---
# Nota: La tupla se define con (valor, etiqueta)

FORMATO_CHOICES = [
    ('text', 'Texto'),
    ('json', 'JSON'),
    ('csv', 'CSV'),
]

TABLA_CHOICES = [
    ('', 'Ambas'),
    ('PQ', 'P y Q'),
    ('RST', 'R, S y T'),
]

TARGET_CHOICES = [('Ai', 'Ai'), ('Bi', 'Bi')] + [(p, p) for p in PRODUCTOS]

CURVA_CHOICES = [
    ('tau', 'tau(a)'),
    ('F', 'F(a)'),
    ('F0', 'F0(a)'),
]

# Tope de n para no disparar por accidente cálculos exactos enormes
N_MAX_TOPE = 200


def parsear_tolerancias(texto):
    """
    'clave=valor,clave=valor' -> dict; un valor sin clave se aplica a
    todas las tolerancias configuradas.
    """
    tolerancias = {}
    claves = settings.AIRY_TOLERANCIAS
    for parte in filter(None, (p.strip() for p in texto.split(','))):
        clave, _, valor = parte.rpartition('=')
        try:
            numero = float(valor)
        except ValueError:
            raise ValidationError(f"Tolerancia no numérica: {parte!r}")
        if not numero > 0:
            raise ValidationError(f"La tolerancia debe ser positiva: {parte!r}")
        if not clave:
            tolerancias.update(dict.fromkeys(claves, numero))
        elif clave in claves:
            tolerancias[clave] = numero
        else:
            raise ValidationError(f"Tolerancia desconocida: {clave!r}. Opciones: {', '.join(claves)}")
    return tolerancias


# =========================================================
# FORMULARIOS DE CONFIGURACIÓN (CLI Y API)
# =========================================================

class RunConfigForm(forms.Form):
    """Opciones comunes de todos los comandos."""

    format = forms.ChoiceField(choices=FORMATO_CHOICES, required=False, label="Formato de salida")
    n_max = forms.IntegerField(min_value=0, max_value=N_MAX_TOPE, required=False, label="n máximo")
    seed = forms.IntegerField(min_value=0, required=False, label="Semilla")
    tol = forms.CharField(required=False, label="Tolerancias")

    def clean_format(self):
        return self.cleaned_data.get('format') or 'text'

    def clean_tol(self):
        return parsear_tolerancias(self.cleaned_data.get('tol') or '')


class TablasForm(RunConfigForm):
    familias = forms.ChoiceField(choices=TABLA_CHOICES, required=False, label="Tabla")


class VerificarForm(RunConfigForm):
    solo = forms.CharField(required=False, label="Chequeos")
    golden = forms.CharField(required=False, label="Reemplazos de tabla")
    hilos = forms.IntegerField(min_value=1, max_value=64, required=False, label="Hilos")

    def clean_solo(self):
        texto = self.cleaned_data.get('solo') or ''
        return [nombre.strip() for nombre in texto.split(',') if nombre.strip()]

    def clean_golden(self):
        """
        'Q:10=20x^3+81;R:2=2x' -> {'Q': {10: '20x^3+81'}, 'R': {2: '2x'}}.
        El texto debe ser un polinomio válido.
        """
        reemplazos = {}
        for parte in filter(None, (p.strip() for p in (self.cleaned_data.get('golden') or '').split(';'))):
            destino, signo, texto = parte.partition('=')
            familia, _, indice = destino.partition(':')
            familia = familia.strip().upper()
            if not signo or familia not in FAMILIAS_TABLA or not indice.strip().isdigit():
                raise ValidationError(f"Reemplazo inválido: {parte!r} (formato FAMILIA:n=polinomio)")
            try:
                Poly.from_text(texto.strip())
            except ValueError as e:
                raise ValidationError(f"Polinomio inválido en {parte!r}: {e}")
            reemplazos.setdefault(familia, {})[int(indice)] = texto.strip()
        return reemplazos


class EvaluarForm(RunConfigForm):
    target = forms.ChoiceField(choices=TARGET_CHOICES, label="Función")
    n = forms.IntegerField(min_value=0, max_value=N_MAX_TOPE, label="Orden de la derivada")
    x = forms.FloatField(label="Punto")

    def clean_x(self):
        x = self.cleaned_data['x']
        if not abs(x) <= X_MAX:
            raise ValidationError(f"|x| debe ser <= {X_MAX:g}; la serie pierde precisión fuera de esa ventana.")
        return x


class CerosForm(RunConfigForm):
    familias = forms.CharField(required=False, label="Familias")

    def clean_familias(self):
        """'PQZ' o 'P,Q,Z' -> ('P', 'Q', 'Z'); vacío equivale a las seis."""
        texto = (self.cleaned_data.get('familias') or '').replace(',', '').replace(' ', '').upper()
        if not texto:
            return FAMILIAS
        desconocidas = sorted(set(texto) - set(FAMILIAS))
        if desconocidas:
            raise ValidationError(f"Familias desconocidas: {', '.join(desconocidas)}")
        return tuple(f for f in FAMILIAS if f in texto)


class PlotdataForm(RunConfigForm):
    curve = forms.ChoiceField(choices=CURVA_CHOICES, label="Curva")
    a_min = forms.FloatField(required=False, label="a mínimo")
    a_max = forms.FloatField(required=False, label="a máximo")
    steps = forms.IntegerField(min_value=2, max_value=100000, required=False, label="Pasos")

    def clean(self):
        cleaned_data = super().clean()
        if cleaned_data.get('a_min') is None:
            cleaned_data['a_min'] = -1.5
        if cleaned_data.get('a_max') is None:
            cleaned_data['a_max'] = 2.5
        if cleaned_data.get('steps') is None and 'steps' not in self.errors:
            cleaned_data['steps'] = 401
        if cleaned_data['a_min'] >= cleaned_data['a_max']:
            self.add_error('a_max', "a máximo debe ser mayor que a mínimo.")
        return cleaned_data
