from django.db import models


# =========================================================
# CORRIDAS DE LA SUITE DE VERIFICACIÓN
# =========================================================

class CorridaVerificacion(models.Model):
    id_corrida = models.AutoField(db_column='ID_Corrida', primary_key=True)
    fecha = models.DateTimeField(db_column='Fecha', auto_now_add=True)
    semilla = models.BigIntegerField(db_column='Semilla')
    n_max = models.PositiveIntegerField(db_column='N_Max')
    veredicto = models.BooleanField(db_column='Veredicto')
    total_chequeos = models.PositiveIntegerField(db_column='Total_Chequeos')
    fallidos = models.PositiveIntegerField(db_column='Fallidos', default=0)
    duracion = models.FloatField(db_column='Duracion', help_text='Segundos')

    class Meta:
        db_table = 'corrida_verificacion'
        ordering = ('-fecha',)

    def __str__(self):
        estado = 'aprobada' if self.veredicto else 'fallida'
        return f"Corrida #{self.id_corrida} ({estado}, semilla {self.semilla})"


class RegistroChequeo(models.Model):
    ESTADOS = (
        ('pass', 'Aprobado'),
        ('fail', 'Fallido'),
    )

    id_registro = models.AutoField(db_column='ID_Registro', primary_key=True)
    # Si se elimina la corrida se eliminan sus registros (CASCADE).
    corrida = models.ForeignKey(
        CorridaVerificacion,
        models.CASCADE,
        db_column='ID_Corrida',
        related_name='registros',
    )
    # 'check' chocaría con Model.check() de Django
    chequeo = models.CharField(db_column='Check', max_length=60)
    family = models.CharField(db_column='Family', max_length=30, blank=True)
    n = models.IntegerField(db_column='N', blank=True, null=True)
    status = models.CharField(db_column='Status', max_length=4, choices=ESTADOS)
    lhs = models.TextField(db_column='LHS', blank=True)
    rhs = models.TextField(db_column='RHS', blank=True)
    rel_err = models.FloatField(db_column='Rel_Err', blank=True, null=True)
    detail = models.TextField(db_column='Detail', blank=True)

    class Meta:
        db_table = 'registro_chequeo'
        ordering = ('corrida', 'id_registro')

    def __str__(self):
        return f"{self.chequeo} [{self.family} n={self.n}] {self.status}"
