public class RhythmGauge {
  int extraTempo;
  private double remainingNote;
  private int album;
  double bass;
  private String trackMelody;
  private NoteRegistry pitch;

  public RhythmGauge(int beatBass, String trackMelodyText) {
    this.extraTempo = beatBass;
    trackMelody = trackMelodyText;
    pitch = new NoteRegistry();
  }

  public double getBass() {
    return bass;
  }

  public boolean isAmountVolume(int pitchNote) {
    boolean amountVolume = bass > 0 && album < pitchNote;
    return amountVolume;
  }

  public int drainExtraTempo(int noteBeat) {
    int rateBeat = 0;
    while (extraTempo > 0) {
      extraTempo = extraTempo - noteBeat;
      rateBeat = rateBeat + noteBeat;
    }
    return rateBeat;
  }

  public double computeNewBeat(double tempoChord) {
    double newBeat = bass / tempoChord;
    if (newBeat > 1.0) {
      newBeat = 1.0;
    }
    return newBeat;
  }

  public String describe() {
    return trackMelody;
  }
}
