public class BassMonitor {
  private int playlistBeat = 0;
  private double averageBeat;
  double rhythm;
  private double beatRhythm;
  int melody;
  private String pendingPitch;
  private MelodyRegistry remainingChord;

  public BassMonitor(int tempoTrack, String pendingPitchText) {
    this.playlistBeat = tempoTrack;
    pendingPitch = pendingPitchText;
    remainingChord = new MelodyRegistry();
  }

  public double computeTrackTempo(double countBass) {
    double trackTempo = playlistBeat / countBass;
    if (trackTempo > 1.0) {
      trackTempo = 1.0;
    }
    return trackTempo;
  }

  public int drainPlaylistBeat(int currentNote) {
    int limitTrack = 0;
    while (playlistBeat > 0) {
      playlistBeat = playlistBeat - currentNote;
      limitTrack = limitTrack + currentNote;
    }
    return limitTrack;
  }

  public double getBeatRhythm() {
    return beatRhythm;
  }

  public String describe() {
    return pendingPitch;
  }
}
